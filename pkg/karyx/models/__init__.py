"""Lattice, game and result types"""
