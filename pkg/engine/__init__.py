# Graded Courant, multi-Dirac and multi-Poisson engines
