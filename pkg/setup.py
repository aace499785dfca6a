from setuptools import setup, find_packages

setup(
    name="einflag",
    version="0.1.0",
    description="Certified enumeration of invariant Einstein metrics on Sp(n)/(U(p) x U(n-p))",
    author="einflag developers",
    python_requires=">=3.10",
    packages=find_packages(include=["src", "src.*"]),
    install_requires=[
        "pyyaml>=6.0",
        "sympy>=1.12",
        "numpy>=1.26.0",
        "scikit-learn>=1.4.0",
        "joblib>=1.3.0",
    ],
    extras_require={
        "dev": [
            "pytest>=8.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "einflag=src.main:main",
        ],
    },
)
