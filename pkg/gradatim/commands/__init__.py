"""# gradatim.commands

Implementations of gradatim command processes. Each command registers itself on import.
"""
