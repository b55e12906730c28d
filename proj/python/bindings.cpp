// placeholder, filled by the bindings module
#include <pybind11/pybind11.h>
PYBIND11_MODULE(_chl, m) { m.doc() = "exact coupled symmetric function toolkit"; }
