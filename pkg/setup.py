#!/usr/bin/env python3
"""
karyx - Setup Script
Installs the karyx package and its `karyx` console command
"""
from pathlib import Path

from setuptools import find_packages, setup

HERE = Path(__file__).parent


def read_requirements():
    """Runtime requirements, without the test tooling"""
    lines = (HERE / "requirements.txt").read_text().splitlines()
    return [line.strip() for line in lines if line.strip() and not line.startswith(("#", "pytest"))]


setup(
    name="karyx",
    version="0.1.0",
    description="Importance indices, Moebius transforms and axiom checks for k-ary games",
    long_description=(HERE / "README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.10",
    install_requires=read_requirements(),
    extras_require={"test": ["pytest>=7.4.0"]},
    entry_points={"console_scripts": ["karyx=karyx.main:main"]},
)
