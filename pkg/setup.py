"""Setup configuration for negtrans."""

from setuptools import setup, find_packages

setup(
    name="negtrans",
    version="0.1.0",
    description="Negative translations, propositional deciders and Kripke models",
    packages=find_packages(exclude=["tests", "tests.*", "tools", "examples", "examples.*"]),
    install_requires=[
        "numpy>=1.24.0",
        "pandas>=2.0.0",
        "lark>=1.1.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.11.1",
            "hypothesis>=6.80.0",
            "flake8>=6.1.0",
            "black>=23.7.0",
            "mypy>=1.5.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "negtrans=src.cli.main:run",
        ],
    },
    python_requires=">=3.10",
)
