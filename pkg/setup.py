#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    from setuptools import setup, find_packages
except ImportError:
    from distutils.core import setup, find_packages


with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read().replace('.. :changelog:', '')

requirements = [
    'future',
    'logbook',
    'mock',
    'numpy',
    'pandas',
    'six',
]

test_requirements = [
    'hypothesis',
]

setup(
    name='mullineux',
    version='0.3.0',
    description=(
        'Generalized Mullineux involution on Kleshchev multipartitions.'
    ),
    long_description=readme + '\n\n' + history,
    author='The mullineux developers',
    author_email='mullineux@users.noreply.github.com',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=requirements,
    license='CC BY-NC-ND 4.0',
    zip_safe=False,
    keywords='mullineux crystal multipartition',
    entry_points={
        'console_scripts': [
            'mullineux=mullineux.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: Other/Proprietary License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.5',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
