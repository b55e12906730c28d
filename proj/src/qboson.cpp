// placeholder, filled by the lattice module
