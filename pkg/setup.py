"""
Setup script for django-symbolic-shifts

For modern installation, use pyproject.toml.
This file is kept for backward compatibility.
"""
from setuptools import find_packages, setup

VERSION = '0.1.0'

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='django-symbolic-shifts',
    version=VERSION,
    author='tabaro',
    author_email='christian@tabaro.me',
    description='Languages, minimal forbidden words, periodic measures and β-shifts for symbolic dynamics.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    url='https://github.com/tabaro/django-symbolic-shifts',
    project_urls={
        'Documentation': 'https://github.com/tabaro/django-symbolic-shifts#readme',
        'Bug Tracker': 'https://github.com/tabaro/django-symbolic-shifts/issues',
        'Source Code': 'https://github.com/tabaro/django-symbolic-shifts',
    },
    packages=find_packages(exclude=['symbolic_shifts.tests*', 'docs*', 'examples*']),
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=[
        'django>=3.2',
        'djangorestframework>=3.12',
        'numpy>=1.22',
        'networkx>=2.8',
        'sympy>=1.10',
        'gmpy2>=2.1',
    ],
    extras_require={
        'dev': [
            'pytest>=7.0',
            'pytest-django>=4.5',
            'coverage>=7.0',
            'black>=23.0',
            'flake8>=6.0',
            'mypy>=1.0',
            'isort>=5.12',
            'pre-commit>=3.0',
        ],
    },
    entry_points={
        'console_scripts': ['shifts=symbolic_shifts.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Framework :: Django',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='django rest-framework symbolic-dynamics subshift sofic beta-shift forbidden-words',
    zip_safe=False,
)
