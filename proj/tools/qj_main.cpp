#include "qj/cli.hpp"

int main(int argc, char** argv) { return qj::run_cli(argc, argv); }
