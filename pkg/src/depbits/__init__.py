"""depbits: bounded bit-label encodings of dependency trees for sequence-labeling parsers."""
