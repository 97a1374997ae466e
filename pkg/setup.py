import setuptools
import invol

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name='hew-invol',

    author=invol.__author__,
    author_email=invol.__email__,
    description='Involution statistics and exhaustive checks for small finite groups',
    install_requires=['click>=8.0.3', 'numpy>=1.21', 'sympy>=1.9'],
    license=invol.__license__,
    long_description=long_description,
    long_description_content_type='text/markdown',
    python_requires='>=3.8',
    setup_requires=['click'],
    tests_require=['hypothesis>=6.30'],
    url='https://github.com/hewlock/invol',
    version=invol.__version__,

    classifiers=[
        'Environment :: Console',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points={
        'console_scripts': [
            'invol = invol.__main__:main'
        ],
    },
    packages=[
        'invol',
        'invol.catalog',
        'invol.command',
        'invol.group',
        'invol.involutions',
        'invol.spec',
        'invol.verify',
    ],
)
