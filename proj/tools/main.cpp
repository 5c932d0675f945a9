#include "mint/cli.hpp"

int main(int argc, char** argv) { return mint::run_cli(argc, argv); }
