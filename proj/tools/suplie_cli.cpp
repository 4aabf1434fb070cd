#include "suplie/cli.hpp"

int main(int argc, char** argv) { return suplie::cli::run(argc, argv); }
