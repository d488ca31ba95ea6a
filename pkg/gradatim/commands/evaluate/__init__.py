"""# gradatim.commands.evaluate

Model evaluation command module.
"""
