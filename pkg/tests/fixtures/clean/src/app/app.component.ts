import { Component } from '@angular/core';

@Component({
  selector: 'app-root',
  template: `<app-greeting [audience]="name"></app-greeting>`
})
export class AppComponent {
  name = 'Angular';
}
