#include "baswarm/cli.hpp"

int main(int argc, char** argv) { return baswarm::run_cli(argc, argv); }
