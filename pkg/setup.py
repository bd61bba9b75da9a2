#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Setup script. Imports description from readme."""

import re

import setuptools

verstrline = open("fnlab/__init__.py", "rt").read()
mo = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", verstrline, re.M)

if mo:
    version = mo.group(1)
else:
    raise RuntimeError("Unable to find version fnlab version")

with open("README.rst", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="fnlab",
    version=version,
    description="Finite Freese-Nation mappings, substructures, interval algebras and games on partial orders",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    package_data={"fnlab": ["data/structures/*"]},
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=["numpy", "scipy", "pandas>=1.5", "tqdm", "matplotlib"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["fnlab=fnlab.cli:main"]},
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: MacOS",
        "Operating System :: POSIX :: Linux",
    ],
)
