# Subpacote arith: fatoracao, crivos de divisores, quadrados
