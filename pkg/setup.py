"""
ArtinBD - Artin groups of types B and D

Exact word arithmetic and verification toolkit for the Artin groups of types
B_n and D_n written as semidirect products of free groups by braid groups.

Features:
- Free group and free product word arithmetic with conjugacy witnesses
- Braid actions rhoB, rhoD and rhoPlus on free groups and on K
- Semidirect coordinates with the Artin presentations, centers and special automorphisms
- Rank-2 Artin group normal forms and automorphism classification
- Exhaustive verification suites with JSON reports

License: MIT
Version: 1.0.0
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="artinbd",
    version="1.0.0",
    description="Artin groups of types B and D: braid actions, semidirect products and automorphisms",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["main"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.80.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "artinbd=main:main",
        ],
    },
    include_package_data=True,
    zip_safe=False,
    keywords="artin groups, braid groups, free groups, combinatorial group theory",
)
