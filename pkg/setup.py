"""Setup file."""
import re
from os import path

import setuptools

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, "hypshtuka", "__init__.py"),
          encoding="utf-8") as f:
    __version__ = re.search(
        r'^__version__ = "([^"]+)"', f.read(), re.M).group(1)
with open(path.join(this_directory, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setuptools.setup(
    name="hyp-shtuka",
    version=__version__,
    install_requires=["sympy>=1.9"],
    extras_require={"test": ["hypothesis>=6.0"]},
    include_package_data=True,
    license="Apache License 2.0",
    author="The hyp-shtuka Authors",
    description="Exact hypergeometric ratios, Moore determinants and "
    "shtuka symbols on the projective line over a finite field",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=["function fields", "shtukas", "Moore determinant"],
    test_suite="test",
    packages=setuptools.find_packages(exclude=["test", "examples*"]),
    entry_points={"console_scripts": ["hypshtuka=hypshtuka.cli:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
