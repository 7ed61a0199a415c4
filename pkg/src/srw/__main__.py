from srw.cli import main
import sys
sys.exit(main())
