"""# gradatim

Self-paced deep regression forests that rank samples by likelihood and predictive uncertainty, so 
underrepresented examples are learned early.
"""
