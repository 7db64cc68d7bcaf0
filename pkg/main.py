import sys

from vexen_cluster.infraestructure.input.cli import main

if __name__ == "__main__":
	sys.exit(main())
