# Pacote base
