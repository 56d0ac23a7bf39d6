#!/usr/bin/env python
from setuptools import setup, find_packages

setup(
    name="seminormal",
    version="0.1.0",
    packages=find_packages(include=["seminormal", "seminormal.*"]),
    package_data={"seminormal.fixtures": ["paper_example/*.txt"]},
    install_requires=["numpy", "sympy", "pydantic>=2"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["seminormal = seminormal.cli.main:main"]},
    description="Exact seminormal cactus-group matrices interpolating between promotion and rotation",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
)
