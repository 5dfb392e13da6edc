#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(pycorings, m) {
  m.doc() = "exact coring and comodule computations";
}
