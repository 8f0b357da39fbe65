# Subpacote partitions: nu_k por forca bruta, DP e formulas; sobreparticoes
