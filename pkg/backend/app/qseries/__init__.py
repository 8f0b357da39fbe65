# Subpacote qseries: series truncadas mod m, fatores eta, dissecoes
