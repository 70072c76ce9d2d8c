from setuptools import setup

__version__ = (0, 1, 0)
__versionstr__ = '.'.join(str(i) for i in __version__)

with open('readme.md', 'r') as description_file:
    long_description = description_file.read()

with open('requirements.txt', 'r') as reqs_file:
    install_requires = reqs_file.read().splitlines()

setup(
    name='comprelie',
    description='Exact computer algebra for Com-PreLie and Zinbiel-PreLie bialgebras.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    version=__versionstr__,
    packages=['comprelie'],
    python_requires='>=3.8',
    install_requires=install_requires,
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
)
