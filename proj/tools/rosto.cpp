#include "rosto/report.hpp"

int main(int argc, char** argv) { return rosto::run_cli(argc, argv); }
