"""Setup script."""
from setuptools import find_packages, setup

# Get the long description from the README file
with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="seqrsp",
    version="1.0.0",
    description="Fidelities, classical bounds and minimum sharpness for remote state preparation shared by sequential Bobs.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["seqrsp.test", "seqrsp.test.*"]),
    package_data={"seqrsp.resources": ["*.json"]},
    python_requires=">=3.9",
    install_requires=["numpy>=1.20", "scipy>=1.6"],
    extras_require={"dev": ["pytest", "pylint", "mypy", "black", "isort"]},
    entry_points={"console_scripts": ["seqrsp = seqrsp.cli:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
