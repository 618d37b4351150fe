"""Computations on k-ary games"""
