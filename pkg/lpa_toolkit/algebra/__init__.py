"""
Graphs, coefficient fields and elements of Leavitt path algebras
"""
