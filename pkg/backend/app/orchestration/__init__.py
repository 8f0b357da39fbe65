# Subpacote orchestration
