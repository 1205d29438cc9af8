#!/usr/bin/env python
"""Turning disorder package setup."""

from setuptools import setup

setup(
    name="turning_disorder",
    version="0.1.0",
    description="Turning distances and turning disorders of planar networks",
    packages=["turning_disorder"],
    package_dir={"": "src"},
    scripts=["scripts/turning_disorder"],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.8",
        "shapely>=2.0",
        "matplotlib>=3.5",
    ],
    extras_require={
        "tests": ["pytest>=7", "hypothesis>=6"],
    },
)
