#include "dotscape/cli.hpp"

int main(int argc, char** argv) { return dotscape::run_cli(argc, argv); }
