#include <pybind11/pybind11.h>
PYBIND11_MODULE(_hypertrans, m) { (void)m; }
