#include "wha/cli.hpp"

int main(int argc, char** argv) { return wha::cli::run(argc, argv); }
