# Subpacote congruence: verificacao em progressoes, dissecoes, Sturm e busca
