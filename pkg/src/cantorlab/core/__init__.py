"""The essential building blocks of CantorLab."""
