# Subpacote transformations
