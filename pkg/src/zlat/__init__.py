"""zlat: exact even-lattice arithmetic and the deformation classification of
real Zariski sextics (the 68 ascending T-pairs and their oval/cusp IDs).
"""

__version__ = "0.1.0"
