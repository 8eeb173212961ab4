"""Meta information about the package."""

title     = 'StAnn'
synopsis  = 'Stable annihilators and Alexandrov topologies of Cohen-Macaulay modules'
version   = '1.0.0'
author    = 'StAnn developers'
copyright = '2025–2026, StAnn developers'
license   = 'MIT'
