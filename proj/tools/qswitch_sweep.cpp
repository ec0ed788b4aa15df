#include "qswitch/cli.hpp"

int main(int argc, char** argv) { return qswitch::run_cli(argc, argv); }
