# Subpacote exporters
