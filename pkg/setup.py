import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="tenj",
    version="0.1.0",
    description="exact state sums of 4-manifold triangulations from spherical fusion 2-category data",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    package_data={"tenj.fixtures": ["*.json"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
    ],
    python_requires=">=3.9",
    license="MIT",
    install_requires=[
        "networkx",
        "numpy",
        "omegaconf",
        "termcolor",
        "tyro",
    ],
    entry_points={"console_scripts": ["tenj=tenj.cli:main"]},
)
