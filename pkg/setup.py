from setuptools import setup

setup(
    name='quandlepilot',
    version='0.1',
    description='Constructing and searching latin quandles of order 2^k',
    packages=[
        'quandlepilot',
        'quandlepilot.algebra',
        'quandlepilot.search',
        'quandlepilot.shared',
        'quandlepilot.tests',
        ],
    install_requires=['numpy', 'pandas>=1.5'],
    entry_points={
        'console_scripts': [
            'quandlepilot = quandlepilot.search.start_cli:main',
            ],
        },
)
