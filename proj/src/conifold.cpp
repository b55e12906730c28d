// placeholder, filled by the series module
