from setuptools import setup, find_packages

setup(
    name="nilcoh",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=[
        "pandas",
        "numpy",
        "scipy",
        "sympy",
        "galois",
        "python-dotenv"
    ],
    entry_points={
        'console_scripts': [
            'nilcoh=nilcoh.main:main',
        ],
    },
    author="James Vo",
    author_email="james.quang.vo@gmail.com",
    description="Exact cohomology of nilpotent radicals, Kostant's theorem and unipotent group checks",
    keywords="lie algebra cohomology, root systems, weyl groups, smith normal form, spectral sequences",
    python_requires=">=3.8",
)
