import { Component } from '@angular/core';

@Component({
  selector: 'app-user-log-panel',
  template: `<p>{{ logTotal }}</p>`
})
export class UserLogPanelComponent {
  logTotal = 0;

  logUser0(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
  }

  logUser1(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
  }

  logUser2(): void {
    this.logTotal = this.logTotal + 1;
    this.logTotal = this.logTotal + 2;
    this.logTotal = this.logTotal + 3;
    this.logTotal = this.logTotal + 4;
    this.logTotal = this.logTotal + 5;
    this.logTotal = this.logTotal + 6;
    this.logTotal = this.logTotal + 7;
    this.logTotal = this.logTotal + 8;
    this.logTotal = this.logTotal + 9;
    this.logTotal = this.logTotal + 10;
    this.logTotal = this.logTotal + 11;
    this.logTotal = this.logTotal + 12;
    this.logTotal = this.logTotal + 13;
    this.logTotal = this.logTotal + 14;
    this.logTotal = this.logTotal + 15;
    this.logTotal = this.logTotal + 16;
    this.logTotal = this.logTotal + 17;
    this.logTotal = this.logTotal + 18;
    this.logTotal = this.logTotal + 19;
    this.logTotal = this.logTotal + 20;
  }
}
