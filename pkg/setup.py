"""Setup file."""
import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name='proxqn',
    version='0.1.0',
    description=(
        'Regularized proximal quasi-Newton methods for composite '
        'optimization.'
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        'Programming Language :: Python :: 3',
    ],
    author='The ProxQN Authors',
    license='Apache Licence 2.0',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20', 'scipy>=1.6', 'pandas', 'matplotlib', 'pillow',
        'tqdm>=4.41.0'
    ],
    entry_points={
        'console_scripts': [
            'proxqn-bench=proxqn.bench.cli:main',
        ],
    },
    include_package_data=True,
)
