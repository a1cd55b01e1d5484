from __future__ import absolute_import
from __future__ import print_function

import os
import setuptools


root_dir = os.path.dirname(os.path.realpath(__file__))

# dependencies
INSTALL_REQUIRES = [
    "numpy",
    "omegaconf",
    "tqdm",
    "packaging",
]

# installation
setuptools.setup(
    name="petitcode",
    version=open(os.path.join(root_dir, "petitcode", "version.txt")).read(),
    description="Petit algebras over rings of integers, their finite quotients and coset space-time block codes",
    long_description=open(os.path.join(root_dir, "README.md")).read(),
    long_description_content_type="text/markdown",
    keywords=["nonassociative algebras", "skew polynomials", "space-time codes", "coset codes", "number fields"],
    python_requires=">=3.8",
    install_requires=INSTALL_REQUIRES,
    packages=setuptools.find_packages(exclude=['tests', 'examples']),
    package_data={'petitcode': ['version.txt', 'presets/fields/*.yaml', 'presets/jobs/*.yaml']},
    include_package_data=True,
    entry_points={'console_scripts': ['petitcode=petitcode.cli:main']},
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    license="MIT",
    zip_safe=False,
)
