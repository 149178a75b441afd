"""CI helper tools for negtrans."""
