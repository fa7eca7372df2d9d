import setuptools

from zarex import __version__

test_dependencies = ["hypothesis", "pytest", "pytest-asyncio"]

setuptools.setup(
    name="zarex",
    version=__version__,

    author="zarex contributors",

    description="Extremal functions of forbidden 0-1 matrices and forbidden point patterns.",
    long_description=open("README.rst").read(),

    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),

    install_requires=[
        "attrs>=18.1.0",
        "numpy>=1.24,<3",
        "ruamel.yaml>=0.17,<0.19",
        "simanneal>=0.5,<0.6",
        "yarl>=1.5,<2",
    ],
    extras_require={
        "speedups": ["uvloop>=0.17"],
        "lint": ["black~=24.1", "isort"],
        "test": test_dependencies,
    },
    tests_require=test_dependencies,
    python_requires="~=3.10",

    entry_points={
        "console_scripts": ["zarex=zarex.cli:main"],
    },

    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Framework :: AsyncIO",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
    ],

    package_data={
        "zarex": ["py.typed", "example-config.yaml"],
        "zarex.verify": ["fixtures/*.json"],
    },
)
