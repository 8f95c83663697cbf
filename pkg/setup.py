# becqubits - Setup Script

from setuptools import setup, find_packages
from pathlib import Path

# Read README for long description
readme_path = Path(__file__).parent / "README.md"
if readme_path.exists():
    with open(readme_path, 'r', encoding='utf-8') as f:
        long_description = f.read()
else:
    long_description = "Exact dephasing dynamics of two impurity qubits in a Bose-Einstein condensate"

# Read requirements
requirements_path = Path(__file__).parent / "requirements.txt"
if requirements_path.exists():
    with open(requirements_path, 'r', encoding='utf-8') as f:
        requirements = [line.strip() for line in f if line.strip() and not line.startswith('#')]
else:
    requirements = [
        "click>=8.0.0",
        "rich>=13.0.0",
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pydantic>=2.0.0",
        "psutil>=5.9.0",
    ]

setup(
    name="becqubits",
    version="0.1.0",
    description="Pure-dephasing simulator for two double-well qubits coupled to a BEC reservoir",
    long_description=long_description,
    long_description_content_type="text/markdown",

    # Package configuration
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["becqubits"],
    include_package_data=True,
    python_requires=">=3.9",

    # Dependencies
    install_requires=requirements,

    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "black>=22.0.0",
            "flake8>=5.0.0",
            "freezegun>=1.5.2",
        ],
    },

    # Entry points for CLI
    entry_points={
        "console_scripts": [
            "becqubits=becqubits:main",
        ],
    },

    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Physics",
        "Environment :: Console",
    ],

    keywords=[
        "open-quantum-systems", "decoherence", "entanglement", "bose-einstein-condensate",
        "qubits", "discord", "concurrence",
    ],

    package_data={
        "config": ["presets.json"],
    },

    zip_safe=False,
)
