#include "ideq/cli.hpp"

int main(int argc, char** argv) { return ideq::run_cli(argc, argv); }
