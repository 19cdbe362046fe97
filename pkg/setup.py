from setuptools import setup, find_packages

setup(name='CategoryTools',
      version='0.1',
      description='CategoryTools',
      packages=find_packages("src"),
      package_dir={"": "src"},
      package_data={"CategoryTools": ["category_data/data/*.json"]},
      include_package_data=True,
      install_requires=[
          "setuptools",
          "numpy",
          "monty",
          "networkx",
          "pytest",
      ],
      entry_points={
          "console_scripts": [
              "cattool = CategoryTools.cli.main:main",
          ]
      }
      )
