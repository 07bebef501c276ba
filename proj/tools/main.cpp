#include "cli.hpp"

int main(int argc, char** argv) { return visikit::cli::run(argc, argv); }
