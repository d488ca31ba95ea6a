"""# gradatim.commands.generate

Synthetic benchmark generation command module.
"""
