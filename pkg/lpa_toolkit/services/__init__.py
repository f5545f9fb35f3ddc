"""
Service layer: ideal lattice, graph transforms, property checks
"""
