import { Component, Input } from '@angular/core';
import { Greeting, GreetingService } from './greeting.service';

@Component({
  selector: 'app-greeting',
  templateUrl: './greeting.component.html'
})
export class GreetingComponent {
  @Input() audience = 'world';
  greeting: Greeting | null = null;

  constructor(private readonly greetings: GreetingService) {}

  refresh(): void {
    this.greeting = this.greetings.greet(this.audience);
  }
}
