import { Component } from '@angular/core';

@Component({
  selector: 'app-user-chart-panel',
  template: `<p>{{ chartTotal }}</p>`
})
export class UserChartPanelComponent {
  chartTotal = 0;

  chartUser0(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
  }

  chartUser1(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
  }

  chartUser2(): void {
    this.chartTotal = this.chartTotal + 1;
    this.chartTotal = this.chartTotal + 2;
    this.chartTotal = this.chartTotal + 3;
    this.chartTotal = this.chartTotal + 4;
    this.chartTotal = this.chartTotal + 5;
    this.chartTotal = this.chartTotal + 6;
    this.chartTotal = this.chartTotal + 7;
    this.chartTotal = this.chartTotal + 8;
    this.chartTotal = this.chartTotal + 9;
    this.chartTotal = this.chartTotal + 10;
    this.chartTotal = this.chartTotal + 11;
    this.chartTotal = this.chartTotal + 12;
    this.chartTotal = this.chartTotal + 13;
    this.chartTotal = this.chartTotal + 14;
    this.chartTotal = this.chartTotal + 15;
    this.chartTotal = this.chartTotal + 16;
    this.chartTotal = this.chartTotal + 17;
    this.chartTotal = this.chartTotal + 18;
    this.chartTotal = this.chartTotal + 19;
    this.chartTotal = this.chartTotal + 20;
  }
}
