# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 9:30
# @Last Modified by: wqshen


from setuptools import setup, find_packages

version = "0.1.0"
name = "pytqd"

install_requires = [
    "numpy>=1.17",
    "pandas",
    "sympy>=1.8",
    "logzero>=1.0",
    "pyyaml",
    "retrying",
]

classifiers = [
    "Development Status :: 4 - Beta",
    "Intended Audience :: Science/Research",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: 3.8",
    "Topic :: Scientific/Engineering :: Mathematics",
]

setup(
    name=name,
    version=version,
    description="Exact braid group images from twisted quantum doubles of finite groups",
    author="Wenqiang Shen",
    author_email="wqshen91@163.com",
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={'test': ['pytest']},
    classifiers=classifiers,
    packages=find_packages(),
    package_data={'pytqd': ['config/*.yml']},
    long_description=open('README.rst', 'r', encoding='utf8').read(),
    entry_points={
        'console_scripts': [
            'tqd=pytqd.cli:_main',
        ]
    },
    include_package_data=True,
    zip_safe=False,
)
