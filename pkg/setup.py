from distutils.core import setup

from setuptools import find_packages

from vertex_dwpf import __version__

classifiers = """
Development Status :: 4 - Beta
Environment :: Console
License :: OSI Approved :: Apache Software License
Intended Audience :: Science/Research
Topic :: Scientific/Engineering
Topic :: Scientific/Engineering :: Physics
Topic :: Scientific/Engineering :: Mathematics
Programming Language :: Python :: 3.7
Programming Language :: Python :: 3.8
Operating System :: POSIX :: Linux
""".strip().split('\n')

setup(name='vertex-dwpf',
      version=__version__,
      description='Domain wall partition functions of the Deguchi-Akutsu and Perk-Schultz vertex models',
      license='Apache v2.0',
      classifiers=classifiers,
      install_requires=[
          'apscheduler',
          'pandas',
          'numpy',
          'sympy',
          'pytest',
          'pyyaml',
      ],
      packages=find_packages(),
      include_package_data=True,
      package_data={'vertex_dwpf': ['service/config/*.yaml', 'test/unit/service/data/*',
                                   'test/unit/service/data/*/config/*']},
      scripts=['bin/vertex-dwpf'],
)
