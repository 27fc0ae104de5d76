# Multi-Dirac Engine
# Core package
