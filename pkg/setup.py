"""Setup configuration for two_sided_flg package."""
from setuptools import setup, find_packages

setup(
    name="two_sided_flg",
    version="1.0.0",
    description="Two-sided facility location games: exact loads, equilibria and PoA experiments",
    author="forestxieCode",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        line.strip()
        for line in open("requirements.txt").readlines()
        if line.strip() and not line.startswith("#")
    ],
    extras_require={
        "test": ["pytest>=7.0.0", "networkx>=3.0"],
    },
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "flg=scripts.cli:main",
            "flg-demo=scripts.demo:main",
            "flg-visualize=scripts.visualize_workflow:visualize_workflow",
        ],
    },
)
