"""
gscat
"""

from setuptools import setup

packages = [
    'gscat',
    'gscat.core',
    'gscat.functors',
    'gscat.finrel',
    'gscat.preord',
    'gscat.monads',
    'gscat.pspan',
    'gscat.finstoch',
    'gscat.termgraph',
]

install_requires = [
    'cachetools',
    'pyyaml',
    'numpy',
    'networkx',
]

tests_requires = [
    'pytest',
    'hypothesis',
]

setup(
    name='gscat',
    version='0.1.0',
    license='MIT',
    description='Executable gs-monoidal and oplax cartesian categories with law checkers',
    packages=packages,
    include_package_data=True,
    package_data={'gscat': ['schemas/*.yaml']},
    package_dir={'': 'src'},
    zip_safe=False,
    platforms='any',
    python_requires='>=3.7',
    install_requires=install_requires,
    tests_requires=tests_requires,
    extras_require={'test': tests_requires},
    classifiers=[
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    scripts=['bin/gscat']
)
