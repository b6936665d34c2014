#include "dualtt/cli.hpp"

int main(int argc, char** argv) { return dualtt::cliMain(argc, argv); }
