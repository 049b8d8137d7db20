from setuptools import setup

__version__ = "0.1.0"


setup(
    name="entwinelib",
    version=__version__,
    description="Crossed products by coalgebras: entwinings, cleft extensions and gauge transformations.",
    long_description="""Exact-arithmetic construction and randomized verification of crossed products by coalgebras.""",
    license="Apache License, Version 2.0",
    packages=["entwinelib"],
    keywords=["entwining", "coalgebra", "crossed product", "quantum group", "algebra"],
    install_requires=["six", "sympy"],
    entry_points={"console_scripts": ["entwinelib=entwinelib.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
