from setuptools import setup
from setuptools import find_packages


with open("docs/README.PyPI.md", "r") as fh:
    long_description = fh.read()

setup(
   name='lambdaquid',
   version='0.1',
   description='Exact arithmetic, reduction and enumeration of lambda-quiddities over Z, Z/nZ, Z[X] and Z[2i]',
   author='lambdaquid contributors',
   license='GPLv3',
   long_description=long_description,
   long_description_content_type="text/markdown",
   packages=find_packages(exclude=["tests", "tests.*"]),
   install_requires=['numpy>=1.17',
                     'tqdm>=4.0'],
   extras_require={'tests': ['pytest>=6.0',
                             'hypothesis>=5.0']},
   entry_points={'console_scripts': ['lambdaquid=lambdaquid.cli:main']},
   python_requires='>=3.7',
   classifiers=["Programming Language :: Python :: 3",
                "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
                "Operating System :: OS Independent",

                "Intended Audience :: Science/Research",
                "Intended Audience :: Education",

                "Topic :: Scientific/Engineering :: Mathematics"]
)
