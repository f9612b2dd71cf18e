#include "cli.hpp"

int main(int argc, char** argv) { return clarcube::cli::run(argc, argv); }
