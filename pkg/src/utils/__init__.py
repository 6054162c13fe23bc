"""
Utils package for indatt: error handling and configuration.
"""
