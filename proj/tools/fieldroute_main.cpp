#include "fieldroute/cli.hpp"

int main(int argc, char** argv) { return fieldroute::run_cli(argc, argv); }
