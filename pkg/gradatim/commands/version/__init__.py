"""# gradatim.commands.version

Version command module.
"""
