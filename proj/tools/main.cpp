#include "tristar/cli.hpp"

int main(int argc, char** argv) { return tristar::cli::run(argc, argv); }
